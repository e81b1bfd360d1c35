// Generated by athos-forge. Do not edit.
namespace AthosGenerated
{
    public partial class MainForm : System.Windows.Forms.Form
    {
        private System.Windows.Forms.Label nameLabel;
        private System.Windows.Forms.TextBox nameBox;
        private System.Windows.Forms.Button okButton;

        public MainForm()
        {
            InitializeComponent();
        }

        private void InitializeComponent()
        {
            this.nameLabel = new System.Windows.Forms.Label();
            this.nameBox = new System.Windows.Forms.TextBox();
            this.okButton = new System.Windows.Forms.Button();
            // nameLabel
            this.nameLabel.Name = "nameLabel";
            this.nameLabel.Text = "Name:";
            this.nameLabel.Location = new System.Drawing.Point(10, 12);
            this.nameLabel.Size = new System.Drawing.Size(100, 23);
            this.nameLabel.Font = new System.Drawing.Font("Microsoft Sans Serif", 8.25F, System.Drawing.FontStyle.Regular);
            this.nameLabel.ForeColor = System.Drawing.ColorTranslator.FromHtml("#000000");
            // nameBox
            this.nameBox.Name = "nameBox";
            this.nameBox.Text = "";
            this.nameBox.Location = new System.Drawing.Point(120, 10);
            this.nameBox.Size = new System.Drawing.Size(200, 20);
            this.nameBox.Font = new System.Drawing.Font("Microsoft Sans Serif", 8.25F, System.Drawing.FontStyle.Regular);
            this.nameBox.ForeColor = System.Drawing.ColorTranslator.FromHtml("#000000");
            this.nameBox.Multiline = false;
            this.nameBox.ReadOnly = false;
            // okButton
            // Saves the record
            this.okButton.Name = "okButton";
            this.okButton.Text = "OK";
            this.okButton.Location = new System.Drawing.Point(120, 40);
            this.okButton.Size = new System.Drawing.Size(75, 23);
            this.okButton.Font = new System.Drawing.Font("Microsoft Sans Serif", 8.25F, System.Drawing.FontStyle.Regular);
            this.okButton.ForeColor = System.Drawing.ColorTranslator.FromHtml("#000000");
            this.Controls.Add(this.nameLabel);
            this.Controls.Add(this.nameBox);
            this.Controls.Add(this.okButton);
            this.ClientSize = new System.Drawing.Size(600, 400);
            this.Text = "Main Form";
            this.Name = "MainForm";
        }
    }
}
